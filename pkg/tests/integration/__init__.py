"""Integration tests for samba_gqw."""
