import hypothesis

hypothesis.settings.register_profile(
    "default", max_examples=60, deadline=None
)
hypothesis.settings.register_profile(
    "thorough", max_examples=500, deadline=None
)
hypothesis.settings.load_profile("default")

ODD_PRIMES_TO_97 = (
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
    61, 67, 71, 73, 79, 83, 89, 97,
)
