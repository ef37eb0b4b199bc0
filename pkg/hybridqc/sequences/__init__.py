"""
   Letter sequences and their finite-window symbolic dynamics.

   .. autosummary::

      substitution
      source
      catalogue
      symbolic
"""
