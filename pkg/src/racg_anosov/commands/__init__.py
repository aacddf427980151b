from .command import Command
from .nerve_command import NerveCommand
from .rep_command import RepCommand
from .word_command import WordCommand
from .walls_command import WallsCommand
from .gaps_command import GapsCommand
from .halfcone_command import HalfconeCommand
from .hilbert_command import HilbertCommand
from .appendix_command import AppendixCommand
