from well_pressure.cli import run

run()
