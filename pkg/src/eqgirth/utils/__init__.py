"""eqgirth utilities package.

This package contains small helpers shared by the numerical modules and the
verification layer, such as class-name conversion for registry keys.
"""
