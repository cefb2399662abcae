#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# polyquant documentation build configuration file

import os

import polyquant


# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'numpydoc',
    'IPython.sphinxext.ipython_directive',
    'IPython.sphinxext.ipython_console_highlighting',
]

autosummary_generate = True
numpydoc_class_members_toctree = True
numpydoc_show_class_members = False

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'polyquant'
copyright = '2026, polyquant developers'
author = 'polyquant developers'

# Strip any local build suffix from the installed version
version = polyquant.__version__.split('+')[0]
release = polyquant.__version__

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'


# -- Options for HTML output ----------------------------------------------

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'
if not on_rtd:
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

html_static_path = ['_static']
htmlhelp_basename = 'polyquantdoc'


# -- Options for LaTeX, man and Texinfo output ----------------------------

latex_documents = [
    (master_doc, 'polyquant.tex', 'polyquant Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'polyquant', 'polyquant Documentation', [author], 1)
]

texinfo_documents = [
    (master_doc, 'polyquant', 'polyquant Documentation',
     author, 'polyquant', 'Optimal quantizers on regular polygon boundaries.',
     'Miscellaneous'),
]
