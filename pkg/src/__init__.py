"""Parking-function poset library: noncrossing 2-partitions in exact arithmetic."""
