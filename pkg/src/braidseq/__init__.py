"""braidseq: constructive families of pseudo-Anosov braids with small
normalized entropy, with exact and numerical dilatation machinery."""

from .words import BraidWord, Permutation, linking_profile

__version__ = "0.1.0"

__all__ = ["BraidWord", "Permutation", "linking_profile", "__version__"]
