"""Rigid objects, cluster tilting and mutation for Kronecker quivers.

Modules
    exact       exact rational linear algebra
    roots       quivers, Euler and Tits forms, reflections, real roots
    repcat      representations, Hom/Ext, translates, generic rigid objects
    clustercat  the cluster category of the Kronecker algebra
    theoremlab  verification campaigns producing reports
    cli         command-line front end
"""

__version__ = "0.1.0"
