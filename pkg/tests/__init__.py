"""Tests for samba_gqw."""
