# Codes, dissections, isomers, networks, graphs and catalogs
