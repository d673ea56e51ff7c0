from .abel import *
from .ej import *
from .ml import *
