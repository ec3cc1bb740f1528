"""Unit tests for samba_gqw.schedule."""
