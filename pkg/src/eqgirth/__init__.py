"""
eqgirth

A Python package to verify the Hofer-distance bounds behind the girth of the
space of oriented equators of the 2-sphere.

Modules:
- sphere_geom: Contains the normalized sphere geometry and area quadrature.
- hofer_bounds: Contains the closed-form Hofer bounds for rotations and great circles.
- pipe_model: Contains the pipe-equator charts and the cost functions f1, f2 and F.
- girth_opt: Contains the certified maximization of F and the diameter bound.
- perturbation: Contains the lens areas of perturbed great circles and the graph flow.
- topology_checks: Contains the index of the rotation lift at its singular point.
- checks: Contains the verification checks behind the CLI subcommands.
- conf: Contains configuration and settings management.
- utils: Contains utility functions and classes.

Usage:
```python
from eqgirth.girth_opt import maximize_F, embedding_diameter_bound

result = maximize_F("1/120")
print(result.max_value, result.canonical_argmax)

report = embedding_diameter_bound(delta=0.01, eps=0.05, n_theta=128, n_phi=64)
print(report.core_bound, report.band_slack)
```

Author:
- Paul Brauckmann

License:
```
MIT License

Copyright (c) 2025 AIDH MS

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
```
"""
