import os

from flask import Config

__version__ = '0.1.0'


def create_config(test_config=None):
    '''
    create_config(test_config)
        builds the settings mapping: package defaults, then PST_APSP_*
        environment variables, then the optional test_config mapping
    '''
    settings = Config(os.path.abspath(os.path.dirname(__file__)))
    settings.from_object('pst_apsp.config')
    settings.from_prefixed_env('PST_APSP')
    if test_config is not None:
        settings.from_mapping(test_config)
    return settings
