# -*- coding: utf-8 -*-
#
# Sphinx configuration for the polybell documentation.

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))


# -- Project information -----------------------------------------------------

project = 'polybell'
author = 'The polybell developers'
copyright = '2026, ' + author

version = '0.0'
release = '0.0.1'


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.viewcode',
]

# Members are listed in source order.
autodoc_member_order = 'bysource'

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = []
pygments_style = 'sphinx'


# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'
htmlhelp_basename = 'polybelldoc'


# -- Options for LaTeX and manual page output --------------------------------

latex_documents = [
    (master_doc, 'polybell.tex', 'polybell Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'polybell', 'polybell Documentation', [author], 1),
]


# -- Extension configuration -------------------------------------------------

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}
