# Reusable output builders
