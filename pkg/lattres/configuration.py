"""
Reading and writing of the INI configuration, the field of scalars, and the `RunConfig` of a command line run.

Default values live in *lattres.ini* next to this file. An INI file with the same name in the working directory overrides them, see `init_config`.
"""
from typing import Optional, Union
from collections import defaultdict
from dataclasses import dataclass
import dataclasses
from functools import lru_cache
from pathlib import Path
import configparser
import ast
import os
from sympy import QQ, GF, isprime
from sympy.polys.domains.domain import Domain


CONFIG_FILE = Path(__file__).resolve().parent / "lattres.ini"


def write_config(config_dict: dict, path: Union[str, Path]):
    """Writes a configuration file to the path.

    Parameters
    ----------
    config_dict : dict
        Dictionary of configuration parameters. Nested dictionaries become sections, other values go to the ``main`` section.
    path : str
        Path to the file. Must include the desired extension.
    """
    config = configparser.ConfigParser()

    for key, value in config_dict.items():
        if isinstance(value, dict):
            config[key] = {name: repr(item) for name, item in value.items()}
        else:
            if "main" not in config:
                config["main"] = {}
            config["main"][key] = repr(value)

    with open(path, "w") as configfile:
        config.write(configfile)


def read_config(path: Union[str, Path], config_dict: Optional[dict] = None) -> dict:
    """Reads an INI formatted configuration file and parses it to a nested dict.

    Each section of the INI file is parsed as a separate nested dictionary. Parameters under the "main" section are parsed in the main dictionary. All values are converted by `ast.literal_eval()`, values that cannot be converted are kept as strings.

    Parameters
    ----------
    path : str
        Path to the file.
    config_dict : dict, optional
        Nested dictionary of default parameters, updated in place.

    Examples
    --------
    The section

    .. code-block:: text

        [resolution]
        max_basis = 262144
        field = "Q"

    is parsed as

        >>> read_config("lattres.ini")["resolution"]
        {'max_basis': 262144, 'field': 'Q'}
    """
    if config_dict is None:
        config_dict = defaultdict(dict)

    config = configparser.ConfigParser()
    config.read(path)

    for section_name in config.sections():
        section_config = config_dict if section_name == "main" else config_dict[section_name]
        for key, item in config.items(section_name):
            try:
                section_config[key] = ast.literal_eval(item)
            except (ValueError, SyntaxError):
                section_config[key] = item
    return config_dict


def init_config(ini_file: Path = CONFIG_FILE, write: bool = False) -> dict:
    """Reads the default and the user defined INI file.

    The INI file stored in the package directory is read first. If an INI file with the same name exists in the working directory, its values overwrite the defaults.

    Parameters
    ----------
    write : bool
        Writes the default configuration to the working directory of the user.

    See Also
    --------
    write_config
    read_config
    """
    config_dict = read_config(ini_file)
    config_path = Path.cwd() / ini_file.name
    if write:
        write_config(config_dict, config_path)
    if os.path.exists(config_path):
        read_config(config_path, config_dict)
    return config_dict


@lru_cache(maxsize=None)
def _cached_config() -> dict:
    return dict(init_config())


def get_config(section: str) -> dict:
    """Returns a copy of one section of the merged configuration."""
    return dict(_cached_config()[section])


def get_field(name: Union[str, int, None] = None) -> Domain:
    """Returns the field of scalars.

    Parameters
    ----------
    name
        ``"Q"`` for the rationals, or a prime ``p`` (int or decimal string) for ``GF(p)``. Defaults to the ``[resolution]`` section of the configuration.
    """
    if name is None:
        name = get_config("resolution")["field"]
    if isinstance(name, str) and name.upper() in ("Q", "QQ"):
        return QQ
    try:
        prime = int(name)
    except (TypeError, ValueError):
        raise ValueError(f"Field <{name}> is neither Q nor a prime.")
    if not isprime(prime):
        raise ValueError(f"Field characteristic {prime} is not prime.")
    return GF(prime)


def field_name(domain: Domain) -> str:
    """Name of a field as recorded in reports, ``"Q"`` or ``"GF(p)"``."""
    if domain == QQ:
        return "Q"
    return f"GF({domain.characteristic()})"


@dataclass
class RunConfig:
    """Settings of a single command line run, merged over the INI defaults."""

    command: str
    input: Optional[str] = None
    field: Union[str, int, None] = None
    json: bool = False
    seed: Optional[int] = None
    caps: dict = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        for name, value in self.caps.items():
            if value is not None and value <= 0:
                raise ValueError(f"Cap <{name}> must be positive, got {value}.")
        if self.seed is None:
            self.seed = get_config("suite")["seed"]
        self.domain = get_field(self.field)

    @property
    def field_label(self) -> str:
        return field_name(self.domain)
