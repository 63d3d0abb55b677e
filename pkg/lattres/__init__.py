from . import posets
from . import ideals
from . import resolutions
from . import duality
from . import io
from . import main
from . import suite

__version__ = "0.1.0"
