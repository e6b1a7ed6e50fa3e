from collections import Counter

from hypothesis import settings

# Keep test runs reproducible; the library's own determinism is asserted
# elsewhere, no need for shrink-seed noise here.
settings.register_profile("deterministic", derandomize=True)
settings.load_profile("deterministic")


def same_multiset(a, b) -> bool:
    return Counter(a) == Counter(b)
