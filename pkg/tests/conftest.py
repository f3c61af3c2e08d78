from hypothesis import settings

# exact rational-function arithmetic has heavy-tailed timings
settings.register_profile("default", deadline=None)
settings.load_profile("default")
