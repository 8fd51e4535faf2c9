# __init__.py for commands package
