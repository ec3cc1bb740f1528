"""Unit tests for samba_gqw.hubo."""
