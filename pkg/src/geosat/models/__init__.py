"""
this is a subpackage that contains all the data classes (and their schemas) used by geosat.
"""
