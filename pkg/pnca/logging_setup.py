from __future__ import annotations

import logging

from .config import settings


def get_logger(level: str | None = None) -> logging.Logger:
    # 只在還沒有 handler 時設定，stdout 留給指令輸出
    logger = logging.getLogger("pnca")
    if not logging.getLogger().handlers:
        logging.basicConfig(
            level=settings.log_level(level),
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )
    logger.setLevel(settings.log_level(level))
    return logger
