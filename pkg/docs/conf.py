# -*- coding: utf-8 -*-
#
# hybridqc documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing dir.

import sys, os

# If your extensions are in another directory, add it here. If the directory
# is relative to the documentation root, use os.path.abspath to make it
# absolute, like shown here.
sys.path.append(os.path.dirname(os.path.abspath('.')))

# General configuration
# ---------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.autosummary',
              'sphinx.ext.intersphinx']

intersphinx_mapping = {
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'hybridqc'
copyright = u'2026, hybridqc developers'

version = '0.1'
release = '0.1.0.dev'

exclude_trees = ['_build']
pygments_style = 'sphinx'

# Options for HTML output
# -----------------------

html_static_path = ['_static']
htmlhelp_basename = 'hybridqcdoc'

# Options for LaTeX output
# ------------------------

latex_documents = [
  ('index', 'hybridqc.tex', u'hybridqc Documentation',
   u'hybridqc developers', 'manual'),
]
