"""
   Hybrid potentials and quantum transport on the tight-binding chain.
"""
