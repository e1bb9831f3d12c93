from hypothesis import settings

# exact rational arithmetic has high variance per example; wall-clock
# deadlines only add flakiness here
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")
