# Sphinx configuration of the secondkind documentation.
# Options: https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

# autodoc imports the package from the repository root
sys.path.insert(0, os.path.abspath('..'))

project = 'SecondKind'
copyright = '2026, SecondKind developers'
author = 'SecondKind developers'

import secondkind
release = secondkind.__version__

# autosummary with the templates of _templates/ builds reference.rst,
# napoleon reads the numpy docstrings, recommonmark the Markdown pages
extensions = ['sphinx.ext.autodoc', 'sphinx.ext.autosummary', 'sphinx.ext.napoleon', 'recommonmark']
autosummary_generate = True
napoleon_google_docstring = False

templates_path = ['_templates']
exclude_patterns = ['_build', 'README-documentation.md']

html_theme = 'sphinx_rtd_theme'

# explicit master doc for ReadTheDocs build
master_doc = 'index'
