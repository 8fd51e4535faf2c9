# __init__.py for search package
