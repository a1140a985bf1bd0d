# File helpers and SVG drawing
