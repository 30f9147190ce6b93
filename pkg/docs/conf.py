# -*- coding: utf-8 -*-

import os
import sys
sys.path.append(os.path.abspath('./..'))

extensions = ['sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode']

# Add any paths that contain templates here, relative to this directory.
templates_path = ['_templates']

source_suffix = ['.rst', '.md']

# The master toctree document.
master_doc = 'index'

# General information about the project.
project = 'python-equivrand'
copyright = '2020, python-equivrand contributors'
author = 'python-equivrand contributors'

# The short X.Y version.
version = '0.1'
# The full version, including alpha/beta/rc tags.
release = '0.1.0'

language = None

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'

todo_include_todos = False

html_theme = "sphinx_rtd_theme"

html_static_path = ['_static']

html_sidebars = {
    '**': [
        'relations.html',
        'searchbox.html',
    ]
}

html_theme_options = {
    'collapse_navigation': False,
    'display_version': True,
    'navigation_depth': 3,
}

htmlhelp_basename = 'python-equivranddoc'

source_parsers = {
   '.md': 'recommonmark.parser.CommonMarkParser',
}
