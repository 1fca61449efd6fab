#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# sdsplit documentation build configuration file.
import os
import sys

sys.path.insert(0, os.path.abspath('..'))

# Importing the package loads the config file
os.environ['SDSPLIT_CONFIG_FILENAME'] = os.path.abspath('../example_data/config_test.yml')

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    ]

master_doc = 'index'

project = 'sdsplit'
copyright = '2017, Fabio Zanini'
author = 'Fabio Zanini'

with open('../sdsplit/_version.py') as fversion:
    release = fversion.readline().rstrip().split(' ')[-1]
    version = release.split('_')[0]

exclude_patterns = ['_build']

pygments_style = 'sphinx'

html_theme = 'alabaster'
