"""Unit tests for samba_gqw.metrics."""
