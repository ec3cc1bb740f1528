"""Unit tests for samba_gqw.mixers."""
