"""Unit tests for samba_gqw.engine."""
