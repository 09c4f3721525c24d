"""Tests for the thread-parallel block sweep."""

import os
import time

import pytest

from eqgirth.conf import settings
from eqgirth.conf.helper import override_settings
from eqgirth.girth_opt.sweep import map_blocks, worker_count


class TestWorkerCount:
    """Test cases for worker_count function."""

    @pytest.mark.parametrize(("threads", "expected"), [(1, 1), (3, 3), (0, 1), (-2, 1)])
    def test_explicit(self, threads: int, expected: int) -> None:
        """Test that an explicit cap wins and is at least one."""
        assert worker_count(threads) == expected

    @override_settings(THREADS=2)
    def test_setting(self) -> None:
        """Test that the THREADS setting is the default cap."""
        assert worker_count() == 2

    @override_settings(THREADS=None)
    def test_cpu_fallback(self) -> None:
        """Test the fallback to the CPU count when THREADS is unset."""
        assert settings.THREADS is None
        assert worker_count() == (os.cpu_count() or 1)


class TestMapBlocks:
    """Test cases for map_blocks function."""

    def test_order_is_preserved(self) -> None:
        """Test that results come back in block order, not completion order."""

        def slow_first(block: int) -> int:
            time.sleep(0.01 * (5 - block))
            return block * block

        assert map_blocks(slow_first, list(range(6)), threads=4) == [0, 1, 4, 9, 16, 25]

    def test_serial(self) -> None:
        """Test the single-worker path."""
        assert map_blocks(str, [3, 1, 2], threads=1) == ["3", "1", "2"]

    def test_empty(self) -> None:
        """Test that no blocks give no results."""
        assert map_blocks(str, [], threads=4) == []
