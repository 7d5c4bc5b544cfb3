"""Exact computations with finite groupoids: functors and natural
transformations, actions and principal bundles, bibundles and Morita
equivalence, extensions and gerbe conditions, descent over finite sets, and
equivariant splittings of rational representations."""

from .errors import *  # noqa: F401,F403
from .groups import (FiniteGroup, cyclic, dihedral, direct_product, find_isomorphism, homomorphisms, klein,
                     normal_subgroups, all_subgroups, quaternion, quotient, small_groups, symmetric, trivial_group)
from .core import *  # noqa: F401,F403
from .actions import *  # noqa: F401,F403
from .bibundle import *  # noqa: F401,F403
from .extension import *  # noqa: F401,F403
from .descent import *  # noqa: F401,F403
from .linrep import *  # noqa: F401,F403

__version__ = "0.1.0"
