import functools

from multifan.subword import all_facets
from multifan.words import multiassociahedron_word


@functools.lru_cache(maxsize=None)
def get_index(k: int, n: int):
    """Session-wide cache of enumerated complexes (they are immutable)."""
    return all_facets(multiassociahedron_word(k, n))
