"""End-to-end tests over the bundled worked examples."""
