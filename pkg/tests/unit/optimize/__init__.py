"""Unit tests for samba_gqw.optimize."""
