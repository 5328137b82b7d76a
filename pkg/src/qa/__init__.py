# Acceptance harness
