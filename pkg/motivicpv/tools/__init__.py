"""Internal utilities (exact linear algebra helpers)."""
