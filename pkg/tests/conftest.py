import hypothesis

# The sandboxed CI box is slow and shared; wall-clock deadlines only add noise.
hypothesis.settings.register_profile(
    "default", deadline=None, max_examples=50,
    suppress_health_check=[hypothesis.HealthCheck.too_slow])
hypothesis.settings.load_profile("default")
