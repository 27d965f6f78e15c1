# -*- coding: utf-8 -*-
#
# pyscott documentation build configuration file.

import sys
import os

sys.path.insert(0, os.path.abspath('../src/'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'pyscott'
copyright = u'2026, pyscott developers'

version = '0.1'
release = '0.1.0'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'pyscottdoc'

latex_elements = {
}

latex_documents = [
  ('index', 'pyscott.tex', u'pyscott Documentation',
   u'pyscott developers', 'manual'),
]

man_pages = [
    ('index', 'pyscott', u'pyscott Documentation',
     [u'pyscott developers'], 1)
]

texinfo_documents = [
  ('index', 'pyscott', u'pyscott Documentation',
   u'pyscott developers', 'pyscott',
   'Orbits of generating tuples and Scott sentences of finitely presented '
   'groups.', 'Miscellaneous'),
]
