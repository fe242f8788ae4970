"""Test suite for the parking poset library."""
