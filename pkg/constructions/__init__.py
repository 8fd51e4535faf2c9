# __init__.py for constructions package
