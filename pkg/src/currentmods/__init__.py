"""Current-algebra modules, global Demazure modules and their characters."""
