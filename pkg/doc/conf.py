# -*- coding: utf-8 -*-
#
# python-hdx documentation build configuration file.
import os
import sys
sys.path.insert(0, os.path.abspath('..'))
import hdx  # flake8: noqa


# -- General configuration ---------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.mathjax',
              'sphinx.ext.viewcode']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'python-hdx'
copyright = u'2026, python-hdx developers'

# The short X.Y version.
version = hdx.__version__
# The full version, including alpha/beta/rc tags.
release = version

exclude_patterns = ['_build']
pygments_style = 'sphinx'

autodoc_member_order = 'bysource'


# -- Options for HTML output -------------------------------------------------

html_theme = 'default'
htmlhelp_basename = 'python-hdxdoc'
