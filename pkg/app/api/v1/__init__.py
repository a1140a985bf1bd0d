# Versioned routes
