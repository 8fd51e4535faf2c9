# __init__.py for algebra package
