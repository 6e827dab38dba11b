import logging
import logging.handlers
import os
import sys

DEFAULT_LOG_LEVEL = os.environ.get("TUAV_SIM_LOG_LEVEL", "WARNING")
DEFAULT_LOG_DIR = os.environ.get("TUAV_SIM_LOG_DIR")


def get_logger(name: str = 'simulator',
               log_level: any = None,
               save_path: str = DEFAULT_LOG_DIR):
    logger = logging.getLogger(name)
    logger.setLevel(log_level if log_level is not None else DEFAULT_LOG_LEVEL)

    formatter = logging.Formatter('%(asctime)s | %(name)s | %(levelname)s: %(message)s')

    if len(logger.handlers) == 0:
        logger.addHandler(_get_stream_handler(formatter))

        if save_path is not None:
            _init_path(save_path)
            logger.addHandler(_get_file_handler(save_path, name, formatter))

    return logger


def set_log_level(log_level: any):
    # 이미 만들어진 컴포넌트 로거에 일괄 적용
    for name in ('simulator', 'scenario', 'cli'):
        logging.getLogger(name).setLevel(log_level)


def _get_file_handler(path: str, name: str, formatter):
    file_path = path + '/' + name
    handler = logging.handlers.TimedRotatingFileHandler(filename=file_path, when='midnight',
                                                        interval=1, encoding='utf-8')
    handler.suffix = "%Y%m%d.log"
    handler.setFormatter(formatter)

    return handler


def _get_stream_handler(formatter):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)

    return handler


def _init_path(path: str):
    if not os.path.exists(path):
        os.makedirs(path)
