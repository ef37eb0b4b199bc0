"""
   The ``hybridqc`` command line: experiment configuration, presets,
   sweeps and diagnostics on top of :mod:`hybridqc.sequences` and
   :mod:`hybridqc.transport`.
"""
