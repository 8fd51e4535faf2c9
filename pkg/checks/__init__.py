# __init__.py for checks package
