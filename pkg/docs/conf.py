# -*- coding: utf-8 -*-
#
# Weak Fano Workbench documentation build configuration file.
#
# Only values that differ from the sphinx defaults are set here.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ----------------------------------------------------

extensions = ['sphinx.ext.autodoc']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'wfano-workbench'
copyright = u'2024, wfano-workbench contributors'

version = '0.1'
release = '0.1.0'

exclude_patterns = ['_build']

pygments_style = 'sphinx'

# -- Options for HTML output --------------------------------------------------

html_theme = 'default'

html_static_path = ['_static']

htmlhelp_basename = 'wfano_workbenchdoc'

# -- Options for LaTeX output -------------------------------------------------

latex_documents = [
    ('index',
     'wfano_workbench.tex',
     u'Weak Fano Workbench Documentation',
     u'wfano-workbench contributors', 'manual'),
]

# -- Options for manual page output -------------------------------------------

man_pages = [
    ('index', 'wfano_workbench', u'Weak Fano Workbench Documentation',
     [u'wfano-workbench contributors'], 1)
]
