"""Convenience code for evaluating independent work items with asyncio."""
import asyncio
import concurrent.futures
import logging

logger = logging.getLogger(__name__)


async def gather_in_executor(function, items, executor):
    """Run the function on every item in the executor, keeping input order."""
    loop = asyncio.get_event_loop()
    tasks = [
        loop.run_in_executor(executor, function, item) for item in items
    ]
    return await asyncio.gather(*tasks)

def map_ordered(function, items, workers=1):
    """Map a function over items, optionally on a pool of worker threads.

    Results always come back in the order of the items.
    """
    items = list(items)
    if workers is None or workers <= 1 or len(items) <= 1:
        return [function(item) for item in items]

    logger.debug('Evaluating {} items on {} workers'.format(
        len(items), workers
    ))
    loop = asyncio.new_event_loop()
    try:
        with concurrent.futures.ThreadPoolExecutor(
            max_workers=workers
        ) as executor:
            return loop.run_until_complete(
                gather_in_executor(function, items, executor)
            )
    except KeyboardInterrupt:
        logger.info('Stopping all tasks and quitting...')
        raise
    finally:
        loop.close()
