"""Tests for orbitkit."""
