from .misc import mkdir_if_not_exists, default_threads, parallel_map, update_nested_dict
