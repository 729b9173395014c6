"""HTTP service wrapping the core library; the CLI is a thin client of it."""
