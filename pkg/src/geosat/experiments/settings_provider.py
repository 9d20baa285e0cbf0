"""
Provides the ExperimentSettings via dependency injection. The CLI binds the settings it resolved from its flags;
library users may bind their own or rely on the defaults (which honour GEOSAT_BUDGET).
"""

import inject

from geosat.models.settings import ExperimentSettings


def configure_settings(settings: ExperimentSettings, overwrite: bool = False) -> None:
    """
    binds the settings for the rest of the process; an injector that is already configured is kept as it is
    :param overwrite: if true, an existing injector configuration is replaced (e.g. between tests)
    """

    def configure(binder):
        binder.bind(ExperimentSettings, settings)

    if overwrite:
        inject.clear_and_configure(configure)
    else:
        inject.configure_once(configure)


def get_settings() -> ExperimentSettings:
    """
    returns the bound settings or, if nothing has been configured, the settings read from the environment
    """
    if inject.is_configured():
        return inject.instance(ExperimentSettings)  # type:ignore[return-value]
    return ExperimentSettings.from_environment()
