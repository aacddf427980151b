from .emitter import Emitter
from .json_emitter import JsonEmitter
from .csv_emitter import CsvEmitter
