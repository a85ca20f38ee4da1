import numpy as np


eps = 1e-12
v_min = 1e-12
v_warn = 1e-3
default_step = 1e-4
max_order = 30.0
pictures = ("TO", "TM", "TQ")
inf = np.inf
