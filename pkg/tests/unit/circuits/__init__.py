"""Unit tests for samba_gqw.circuits."""
