# __init__.py for utils package
