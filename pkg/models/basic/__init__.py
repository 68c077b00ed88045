from .additive import AdditiveModel, SensorArray, subtract
