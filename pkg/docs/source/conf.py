# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.

import os
import sys
sys.path.insert(0, os.path.abspath('../../src'))

project = 'ampkit'
copyright = '2026, ampkit Developers'
author = 'ampkit Developers'

version = '0.1'
release = '0.1.0'

extensions = [
    'sphinx.ext.autodoc',
    'repoze.sphinx.autointerface',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = None
exclude_patterns = []
pygments_style = 'sphinx'

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'ampkitdoc'

latex_documents = [
    (master_doc, 'ampkit.tex', 'ampkit Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'ampkit', 'ampkit Documentation',
     [author], 1)
]

texinfo_documents = [
    (master_doc, 'ampkit', 'ampkit Documentation',
     author, 'ampkit', 'Small-signal amplifier design.',
     'Miscellaneous'),
]
