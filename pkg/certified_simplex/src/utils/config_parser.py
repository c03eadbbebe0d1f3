import configparser
from fractions import Fraction

from ..ratlin import parse_rational


class Config:
    def __init__(self, config_file):
        self.config = configparser.ConfigParser(inline_comment_prefixes=('#',))
        self.config.read(config_file)

    def get(self, section, option, type, fallback=None):
        if not self.config.has_option(section, option) or self.config.get(section, option) == '':
            return fallback
        if type == int:
            return self.config.getint(section, option)
        elif type == bool:
            return self.config.getboolean(section, option)
        elif type == Fraction:
            # Exact rationals use the same syntax as the LP files
            return parse_rational(self.config.get(section, option))
        else:
            return self.config.get(section, option)


class Options:
    def __init__(self, config_file='config.ini'):
        config = Config(config_file)

        # solver
        self.verify_certificates = config.get('SOLVER', 'VERIFY_CERTIFICATES', bool, True)

        # minkowski
        self.samples = config.get('MINKOWSKI', 'SAMPLES', int, 50)
        self.sample_low = config.get('MINKOWSKI', 'SAMPLE_LOW', Fraction, Fraction(-2))
        self.sample_high = config.get('MINKOWSKI', 'SAMPLE_HIGH', Fraction, Fraction(10))
        self.sample_denominator = config.get('MINKOWSKI', 'SAMPLE_DENOMINATOR', int, 4)
        self.seed = config.get('MINKOWSKI', 'SEED', int, 0)

        # options
        self.progress = config.get('OPTIONS', 'PROGRESS', bool, False)
        self.debug = config.get('OPTIONS', 'DEBUG', bool, False)
