"""Tests for the hdx package."""
