"""Golden data and the command-line front end."""
