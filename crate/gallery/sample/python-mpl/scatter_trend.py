import numpy as np
import pandas as pd
import matplotlib.pyplot as plt

cars = pd.read_csv("data/cars.csv")
data = cars.dropna(subset=["horsepower", "mpg"])
slope, intercept = np.polyfit(data["horsepower"], data["mpg"], 1)
xs = np.linspace(data["horsepower"].min(), data["horsepower"].max(), 100)
fig, ax = plt.subplots()
ax.scatter(data["horsepower"], data["mpg"], alpha=0.5)
ax.plot(xs, slope * xs + intercept, color="firebrick")
ax.set_xlabel("horsepower")
ax.set_ylabel("mpg")
plt.show()
