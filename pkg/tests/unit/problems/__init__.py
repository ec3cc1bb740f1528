"""Unit tests for samba_gqw.problems."""
