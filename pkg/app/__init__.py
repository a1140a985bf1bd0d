# squarenet: squared rectangles and perfect squared squares via electrical networks

__version__ = "1.0.0"
