from hypothesis import settings

settings.register_profile("ccsec", deadline=None, max_examples=40)
settings.load_profile("ccsec")
