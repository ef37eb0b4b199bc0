"""
   hybridqc provides two APIs: :mod:`hybridqc.sequences` for substitution
   sequences and their finite-window symbolic dynamics, and
   :mod:`hybridqc.transport` for hybrid potentials and quantum transport in
   the one-dimensional tight-binding model. :mod:`hybridqc.experiment` is the
   command line front end built on both.
"""

__version__ = '0.1.0.dev'
