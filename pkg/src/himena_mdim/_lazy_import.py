from typing import TYPE_CHECKING


class LazyScipySparse:
    def __getattr__(self, key: str):
        from scipy import sparse

        return getattr(sparse, key)


class LazyCsgraph:
    def __getattr__(self, key: str):
        from scipy.sparse import csgraph

        return getattr(csgraph, key)


if TYPE_CHECKING:
    from scipy import sparse
    from scipy.sparse import csgraph
else:
    sparse = LazyScipySparse()
    csgraph = LazyCsgraph()

__all__ = ["sparse", "csgraph"]
